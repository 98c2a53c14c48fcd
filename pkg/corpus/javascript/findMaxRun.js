function findMaxRun(values, target) {
    let best = 0;
    let current = 0;
    for (let i = 0; i < values.length; i++) {
        if (values[i] === target) {
            current += 1;
        } else {
            current = 0;
        }
        if (current > best) best = current;
    }
    return best;
}

if (findMaxRun([1, 1, 0, 1, 1, 1], 1) !== 3) { throw new Error("run"); }
if (findMaxRun([], 5) !== 0) { throw new Error("empty"); }
