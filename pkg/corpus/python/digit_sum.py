def digit_sum(number, base):
    if base < 2:
        return 0
    value = abs(number)
    total=0
    while value > 0:
        total = total + value % base
        value = value // base
    return total

if __name__ == "__main__":
    assert digit_sum(1234, 10) == 10
    assert digit_sum(-255, 16) == 30
