# Integration tests - tests using database with mocked cloud providers
