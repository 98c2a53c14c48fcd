#include <cassert>

int medianOfThree(int a, int b) {
    const int c = 10;
    int low = a;
    int high = b;
    if (low > high) {
        low = b;
        high = a;
    }
    if (c < low) return low;
    if (c > high) return high;
    return c;
}

int main() {
    assert(medianOfThree(5, 20) == 10);
    assert(medianOfThree(12, 20) == 12);
    assert(medianOfThree(2, 6) == 6);
    return 0;
}
