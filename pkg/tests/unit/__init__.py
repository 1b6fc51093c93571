# Unit tests - fast, isolated tests with mocked dependencies
