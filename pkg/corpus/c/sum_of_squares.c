#include <assert.h>

long sum_of_squares(int count, int offset) {
    long total = 0;
    for (int i = 1; i <= count; i++) {
        total = total + (long)i * i;
    }
    if (total > 0) total = total + offset;
    return total;
}

int main(void) {
    assert(sum_of_squares(4, 0) == 30);
    assert(sum_of_squares(3, 5) == 19);
    return 0;
}
