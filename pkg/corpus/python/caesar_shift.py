def caesar_shift(message, rotation):
    shifted=[]
    for ch in message:
        if ch.isalpha():
            anchor = 65 if ch.isupper() else 97
            offset = (ord(ch)-anchor+rotation) % 26
            shifted.append(chr(anchor + offset))
        else:
            shifted.append(ch)
    encoded = "".join(shifted)
    return encoded

if __name__ == "__main__":
    assert caesar_shift("Attack at dawn", 3) == "Dwwdfn dw gdzq"
    assert caesar_shift("xyz", 3) == "abc"
