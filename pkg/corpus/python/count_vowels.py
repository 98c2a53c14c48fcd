def count_vowels(text, extra):
    total=0
    vowels = "aeiou"
    for ch in text:
        if ch in vowels:
            total = total + 1
    if total > extra:
        total = total - extra
    answer = total
    return answer

if __name__ == "__main__":
    assert count_vowels("watermark", 0) == 3
    assert count_vowels("aeiou", 2) == 3
