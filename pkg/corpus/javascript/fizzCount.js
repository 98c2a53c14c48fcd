function fizzCount(limit, divisor) {
    let matches = 0;
    for (let n = 1; n <= limit; n++) {
        if (n % divisor === 0) {
            matches += 1;
        }
    }
    const answer = matches;
    return answer;
}

if (fizzCount(30, 3) !== 10) { throw new Error("fizz"); }
if (fizzCount(2, 5) !== 0) { throw new Error("noFizz"); }
