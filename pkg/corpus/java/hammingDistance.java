public static int hammingDistance(String left, String right) {
    int shorter = left.length();
    if (right.length() < shorter) shorter = right.length();
    int mismatches = 0;
    for (int i = 0; i < shorter; i++) {
        if (left.charAt(i) != right.charAt(i)) {
            mismatches = mismatches + 1;
        }
    }
    return mismatches;
}
