function sumDiagonal(grid, scale) {
    let acc = 0;
    for (let i = 0; i < grid.length; i++) {
        acc = acc + grid[i][i] * scale;
    }
    if (acc > 1000) acc = 1000;
    return acc;
}

if (sumDiagonal([[1, 9], [9, 2]], 2) !== 6) { throw new Error("diag"); }
if (sumDiagonal([[900], [0, 900]], 2) !== 1000) { throw new Error("clampDiag"); }
