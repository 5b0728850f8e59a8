package com.example.app;

import java.util.List;
import static java.util.Objects.requireNonNull;

class Placeholder {
}
