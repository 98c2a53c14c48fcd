#include <assert.h>

int triangleAreaDoubled(int base, int height) {
    int doubled = base * height;
    if (doubled < 0) doubled = 0 - doubled;
    int area = doubled;
    return area;
}

int main(void) {
    assert(triangleAreaDoubled(6, 7) == 42);
    assert(triangleAreaDoubled(-6, 7) == 42);
    return 0;
}
