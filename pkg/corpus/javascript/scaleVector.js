function scaleVector(vec, factor) {
    const scaled=[];
    for (let i = 0; i < vec.length; i++) {
        scaled.push(vec[i] * factor);
    }
    return scaled;
}

const vecOut = scaleVector([1, -2, 4], 3).join(",");
if (vecOut !== "3,-6,12") { throw new Error("scale"); }
