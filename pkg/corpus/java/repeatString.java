public static String repeatString(String unit, int copies) {
    StringBuilder out = new StringBuilder();
    int made = 0;
    while (made < copies) {
        out.append(unit);
        made = made + 1;
    }
    String parade = out.toString();
    return parade;
}
