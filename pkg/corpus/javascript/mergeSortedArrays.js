function mergeSortedArrays(left, right) {
    const merged = [];
    let i = 0;
    let j = 0;
    while (i < left.length && j < right.length) {
        if (left[i] <= right[j]) {
            merged.push(left[i]);
            i += 1;
        } else {
            merged.push(right[j]);
            j += 1;
        }
    }
    while (i < left.length) { merged.push(left[i]); i += 1; }
    while (j < right.length) { merged.push(right[j]); j += 1; }
    return merged;
}

const mergedOut = mergeSortedArrays([1, 4, 6], [2, 3, 9]).join(",");
if (mergedOut !== "1,2,3,4,6,9") { throw new Error("merge"); }
