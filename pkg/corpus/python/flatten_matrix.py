def flatten_matrix(rows, width):
    flat = []
    count = 0
    for row in rows:
        for cell in row:
            flat.append(cell)
            count = count+1
    if count > width:
        flat = flat[:width]
    return flat

if __name__ == "__main__":
    assert flatten_matrix([[1, 2], [3, 4]], 10) == [1, 2, 3, 4]
    assert flatten_matrix([[1, 2], [3, 4]], 3) == [1, 2, 3]
