function countBits(value) {
    let remaining = value;
    let bits=0;
    while (remaining > 0) {
        bits += remaining & 1;
        remaining = remaining >>> 1;
    }
    const total = bits;
    return total;
}

if (countBits(255) !== 8) { throw new Error("bits255"); }
if (countBits(0) !== 0) { throw new Error("bits0"); }
