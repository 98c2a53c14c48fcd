public static long triangularNumber(int rows) {
    if (rows < 0) return 0;
    long beads=0;
    for (int r = 1; r <= rows; r++) {
        beads = beads + r;
    }
    return beads;
}
