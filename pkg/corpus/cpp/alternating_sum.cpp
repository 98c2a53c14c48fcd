#include <cassert>

int alternatingSum(const int *terms, int length) {
    int total = 0;
    int sign = 1;
    for (int i = 0; i < length; i++) {
        total = total + sign * terms[i];
        sign = 0 - sign;
    }
    int balance = total;
    return balance;
}

int main() {
    int xs[4] = {10, 3, 2, 1};
    assert(alternatingSum(xs, 4) == 8);
    assert(alternatingSum(xs, 0) == 0);
    return 0;
}
