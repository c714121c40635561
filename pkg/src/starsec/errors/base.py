class StarSecError(Exception):
    """Base exception for all starsec errors."""
    pass
