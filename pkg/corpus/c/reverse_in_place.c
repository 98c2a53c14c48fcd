#include <assert.h>

void reverse_in_place(int *items, int length) {
    int lo=0;
    int hi = length-1;
    while (lo < hi) {
        int tmp = items[lo];
        items[lo] = items[hi];
        items[hi] = tmp;
        lo = lo + 1;
        hi = hi - 1;
    }
}

int main(void) {
    int data[4] = {1, 2, 3, 4};
    reverse_in_place(data, 4);
    assert(data[0] == 4 && data[3] == 1);
    return 0;
}
