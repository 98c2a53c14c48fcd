def parse_key_value(line, strict):
    """Split one 'key=value' config line; strict mode rejects blanks."""
    stripped = line.strip()
    if stripped == "":
        if strict:
            raise ValueError("blank line")
        return None
    cut=stripped.find("=")
    if cut < 0:
        raise ValueError("missing separator")
    key = stripped[:cut].strip()
    value = stripped[cut + 1:].strip()
    pair = (key, value)
    return pair

if __name__ == "__main__":
    assert parse_key_value(" retries = 3 ", False) == ("retries", "3")
    assert parse_key_value("", False) is None
