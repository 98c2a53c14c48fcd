function evalPolynomial(coeffs, x) {
    // Horner scheme, highest-degree coefficient first.
    let acc = 0;
    for (let i = 0; i < coeffs.length; i++) {
        acc = acc * x + coeffs[i];
    }
    const value = acc;
    return value;
}

if (evalPolynomial([2, 0, -1], 3) !== 17) { throw new Error("poly"); }
if (evalPolynomial([], 9) !== 0) { throw new Error("emptyPoly"); }
