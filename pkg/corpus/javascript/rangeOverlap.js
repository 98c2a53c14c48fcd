function rangeOverlap(aLow, aHigh) {
    const bLow = 10;
    const bHigh = 20;
    const low = aLow > bLow ? aLow : bLow;
    const high = aHigh < bHigh ? aHigh : bHigh;
    let width = high - low;
    if (width < 0) width = 0;
    return width;
}

if (rangeOverlap(5, 15) !== 5) { throw new Error("overlap"); }
if (rangeOverlap(1, 4) !== 0) { throw new Error("disjoint"); }
