def collatz_steps(start):
    steps=0
    value = start
    while value != 1:
        if value % 2 == 0:
            value = value // 2
        else:
            value = 3*value+1
        steps = steps + 1
    return steps

if __name__ == "__main__":
    assert collatz_steps(6) == 8
    assert collatz_steps(1) == 0
