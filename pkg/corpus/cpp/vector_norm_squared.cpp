#include <cassert>
#include <vector>

double vectorNormSquared(const std::vector<double> &values, double scale) {
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); i++) {
        acc = acc + values[i] * values[i];
    }
    double result = acc * scale;
    return result;
}

int main() {
    std::vector<double> v = {3.0, 4.0};
    assert(vectorNormSquared(v, 1.0) == 25.0);
    assert(vectorNormSquared(v, 2.0) == 50.0);
    return 0;
}
