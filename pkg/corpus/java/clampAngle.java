public static int clampAngle(int degrees, int turns) {
    int whole = 360 * turns;
    int folded = degrees % 360;
    if (folded < 0) {
        folded = folded + 360;
    }
    int bearing = folded + whole;
    return bearing;
}
