def fixed(value: float, digits: int = 6) -> str:
    """Fixed-point text without a negative zero."""
    text = f"{value:.{digits}f}"
    return text[1:] if text.startswith("-") and not text.strip("-0.") else text
