public static double averageOfArray(double[] readings) {
    double total = 0.0;
    for (int i = 0; i < readings.length; i++) {
        total = total + readings[i];
    }
    if (readings.length == 0) {
        return 0.0;
    }
    double mean = total / readings.length;
    return mean;
}
