#include <cassert>
#include <vector>

int countAboveThreshold(const std::vector<int> &samples, int threshold) {
    int tally = 0;
    for (std::size_t i = 0; i < samples.size(); i++) {
        if (samples[i] > threshold) {
            tally = tally + 1;
        }
    }
    return tally;
}

int main() {
    std::vector<int> xs = {1, 7, 3, 9, 5};
    assert(countAboveThreshold(xs, 4) == 3);
    assert(countAboveThreshold(xs, 100) == 0);
    return 0;
}
