#include <assert.h>

int maxSubarraySum(const int *nums, int length) {
    int best=-2147483647;
    int running = 0;
    for (int i = 0; i < length; i++) {
        running = running + nums[i];
        if (running > best) best = running;
        if (running < 0) running = 0;
    }
    return best;
}

int main(void) {
    int nums[7] = {-2, 1, -3, 4, -1, 2, -5};
    assert(maxSubarraySum(nums, 7) == 5);
    return 0;
}
