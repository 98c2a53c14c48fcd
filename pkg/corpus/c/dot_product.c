#include <assert.h>

long dotProduct(const int *left, const int *right) {
    const int width = 3;
    long acc = 0;
    for (int i = 0; i < width; i++) {
        acc = acc + (long)left[i] * right[i];
    }
    long answer = acc;
    return answer;
}

int main(void) {
    int a[3] = {1, 2, 3};
    int b[3] = {4, 5, 6};
    assert(dotProduct(a, b) == 32);
    return 0;
}
