def running_mean(samples, window):
    means=[]
    acc = 0.0
    for idx in range(len(samples)):
        acc = acc + samples[idx]
        if idx >= window:
            acc = acc - samples[idx - window]
            means.append(acc / window)
    return means

if __name__ == "__main__":
    assert running_mean([1, 2, 3, 4, 5, 6], 2) == [2.5, 3.5, 4.5, 5.5]
    assert running_mean([1, 2], 5) == []
