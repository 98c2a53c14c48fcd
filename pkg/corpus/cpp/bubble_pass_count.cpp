#include <cassert>
#include <vector>

int bubblePassCount(std::vector<int> data) {
    int passes = 0;
    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (std::size_t i = 1; i < data.size(); i++) {
            if (data[i - 1] > data[i]) {
                int keep = data[i];
                data[i] = data[i - 1];
                data[i - 1] = keep;
                dirty = true;
            }
        }
        passes = passes + 1;
    }
    return passes;
}

int main() {
    std::vector<int> xs = {3, 1, 2};
    assert(bubblePassCount(xs) == 3);
    return 0;
}
