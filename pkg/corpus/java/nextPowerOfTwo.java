public static long nextPowerOfTwo(long floorValue) {
    long candidate=1;
    while (candidate < floorValue) {
        candidate = candidate * 2;
    }
    long ceilingPower = candidate;
    return ceilingPower;
}
