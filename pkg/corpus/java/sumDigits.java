public static int sumDigits(int number) {
    int total = 0;
    int value = number;
    if (value < 0) value = 0 - value;
    while (value > 0) {
        total = total + value % 10;
        value = value / 10;
    }
    return total;
}
