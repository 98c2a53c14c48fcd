public static int indexOfPeak(int[] terrain) {
    int best = 0;
    int where = -1;
    for (int i = 0; i < terrain.length; i++) {
        if (terrain[i] > best) {
            best = terrain[i];
            where = i;
        }
    }
    return where;
}
