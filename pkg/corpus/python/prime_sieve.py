def prime_sieve(limit):
    """Indices still marked True after sieving are prime."""
    if limit < 2:
        return []
    flags = [True] * (limit + 1)
    flags[0] = False
    flags[1] = False
    step=2
    while step * step <= limit:
        if flags[step]:
            multiple = step * step
            while multiple <= limit:
                flags[multiple] = False
                multiple = multiple + step
        step = step + 1
    primes = [idx for idx in range(limit + 1) if flags[idx]]
    return primes

if __name__ == "__main__":
    assert prime_sieve(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_sieve(1) == []
