#include <cassert>
#include <string>

int charHistogramPeak(const std::string &text) {
    int counts[26] = {0};
    for (std::size_t i = 0; i < text.size(); i++) {
        char ch = text[i];
        if (ch >= 'a' && ch <= 'z') {
            counts[ch - 'a'] += 1;
        }
    }
    int peak = 0;
    for (int k = 0; k < 26; k++) {
        if (counts[k] > peak) peak = counts[k];
    }
    return peak;
}

int main() {
    assert(charHistogramPeak("mississippi") == 4);
    assert(charHistogramPeak("XYZ") == 0);
    return 0;
}
