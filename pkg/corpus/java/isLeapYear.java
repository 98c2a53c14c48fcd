public static boolean isLeapYear(int year) {
    if (year % 400 == 0) {
        return true;
    }
    if (year % 100 == 0) {
        return false;
    }
    boolean leap=year % 4 == 0;
    return leap;
}
