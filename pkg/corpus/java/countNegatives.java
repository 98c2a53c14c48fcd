public static int countNegatives(int[] samples, int cap) {
    int found = 0;
    for (int i = 0; i < samples.length; i++) {
        if (samples[i] < 0) {
            found = found + 1;
        }
    }
    if (found > cap) found = cap;
    int tally = found;
    return tally;
}
