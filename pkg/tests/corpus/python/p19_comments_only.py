# configuration defaults
# kept for documentation purposes

# end
