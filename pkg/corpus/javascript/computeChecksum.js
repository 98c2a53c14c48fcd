function computeChecksum(bytes, seed) {
    let hash = seed;
    for (let i = 0; i < bytes.length; i++) {
        hash = (hash * 31 + bytes[i]) % 65521;
    }
    if (hash < 0) hash += 65521;
    return hash;
}

if (computeChecksum([1, 2, 3], 7) !== 7014) { throw new Error("checksum"); }
if (computeChecksum([], 42) !== 42) { throw new Error("empty"); }
