#include <cassert>

int wrapIndex(int cursor, int length) {
    int folded = cursor % length;
    if (folded < 0) {
        folded = folded + length;
    }
    int slot = folded;
    return slot;
}

int main() {
    assert(wrapIndex(7, 5) == 2);
    assert(wrapIndex(-1, 5) == 4);
    return 0;
}
