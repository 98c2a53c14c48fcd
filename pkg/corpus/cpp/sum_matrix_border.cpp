#include <cassert>

int sumMatrixBorder(const int grid[3][3], int size) {
    int edge=0;
    for (int r = 0; r < size; r++) {
        for (int c = 0; c < size; c++) {
            if (r == 0 || r == size - 1 || c == 0 || c == size - 1) {
                edge = edge + grid[r][c];
            }
        }
    }
    return edge;
}

int main() {
    int grid[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    assert(sumMatrixBorder(grid, 3) == 40);
    return 0;
}
