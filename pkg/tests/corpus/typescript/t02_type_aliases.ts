type ID = string | number;
type Callback = (value: ID) => void;
type Pair<T> = { first: T; second: T };
