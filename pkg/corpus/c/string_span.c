#include <assert.h>

int stringSpan(const char *text, char needle) {
    int span = 0;
    int idx = 0;
    while (text[idx] != 0) {
        if (text[idx] == needle) span = span + 1;
        idx = idx + 1;
    }
    return span;
}

int main(void) {
    assert(stringSpan("watermark", 'a') == 2);
    assert(stringSpan("", 'x') == 0);
    return 0;
}
