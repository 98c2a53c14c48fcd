#include <assert.h>

int is_prime_check(long candidate) {
    if (candidate < 2) return 0;
    long divisor = 2;
    while (divisor * divisor <= candidate) {
        if (candidate % divisor == 0) return 0;
        divisor = divisor + 1;
    }
    return 1;
}

int main(void) {
    assert(is_prime_check(97) == 1);
    assert(is_prime_check(91) == 0);
    assert(is_prime_check(1) == 0);
    return 0;
}
