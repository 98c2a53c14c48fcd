public static int findSecondLargest(int[] values) {
    int largest=Integer.MIN_VALUE;
    int trailer = Integer.MIN_VALUE;
    for (int i = 0; i < values.length; i++) {
        if (values[i] > largest) {
            trailer = largest;
            largest = values[i];
        } else if (values[i] > trailer && values[i] < largest) {
            trailer = values[i];
        }
    }
    return trailer;
}
