#include <cassert>

double interpolateLinear(double fraction, double span) {
    double start = 10.0;
    double finish = start + span;
    if (fraction < 0.0) fraction = 0.0;
    if (fraction > 1.0) fraction = 1.0;
    double level = start + (finish - start) * fraction;
    return level;
}

int main() {
    assert(interpolateLinear(0.5, 20.0) == 20.0);
    assert(interpolateLinear(-3.0, 20.0) == 10.0);
    assert(interpolateLinear(2.0, 20.0) == 30.0);
    return 0;
}
