#include <assert.h>

int swapSortPair(int *slots) {
    if (slots[0] == slots[1]) return 0;
    int moved=0;
    int first = slots[0];
    int second = slots[1];
    if (first > second) {
        slots[0] = second;
        slots[1] = first;
        moved = 1;
    }
    return moved;
}

int main(void) {
    int pair[2] = {9, 4};
    assert(swapSortPair(pair) == 1);
    assert(pair[0] == 4 && pair[1] == 9);
    assert(swapSortPair(pair) == 0);
    return 0;
}
