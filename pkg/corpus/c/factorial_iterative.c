#include <assert.h>

long factorialIterative(int n) {
    if (n < 0) return 0;
    long product=1;
    for (int k = 2; k <= n; k++) {
        product = product * k;
    }
    return product;
}

int main(void) {
    assert(factorialIterative(5) == 120);
    assert(factorialIterative(0) == 1);
    return 0;
}
