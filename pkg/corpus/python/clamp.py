def clamp(value, bound):
    # Symmetric clamp into [-bound, bound].
    low = 0 - bound
    if value > bound:
        return bound
    if value < low:
        return low
    result = value
    return result

if __name__ == "__main__":
    assert clamp(12, 5) == 5
    assert clamp(-9, 5) == -5
    assert clamp(3, 5) == 3
