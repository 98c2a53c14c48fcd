public static double vowelRatio(String word) {
    int hits = 0;
    String vowels = "aeiouAEIOU";
    for (int i = 0; i < word.length(); i++) {
        char letter = word.charAt(i);
        if (vowels.indexOf(letter) >= 0) {
            hits = hits + 1;
        }
    }
    if (word.length() == 0) return 0.0;
    double ratio = (double) hits / word.length();
    return ratio;
}
