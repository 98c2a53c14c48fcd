def binary_search(items, needle):
    lo=0
    hi = len(items)-1
    while lo <= hi:
        mid = (lo + hi) // 2
        if items[mid] == needle:
            return mid
        if items[mid] < needle:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1

if __name__ == "__main__":
    assert binary_search([2, 5, 7, 11, 13], 11) == 3
    assert binary_search([2, 5, 7], 4) == -1
