def fib_window(count):
    pair=[0, 1]
    series = []
    for idx in range(count):
        series.append(pair[0])
        nxt = pair[0] + pair[1]
        pair = [pair[1], nxt]
    tail = series
    return tail

if __name__ == "__main__":
    assert fib_window(7) == [0, 1, 1, 2, 3, 5, 8]
    assert fib_window(0) == []
