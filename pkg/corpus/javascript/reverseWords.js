function reverseWords(text) {
    const parts = text.split(" ");
    const flipped = [];
    for (let i = parts.length - 1; i >= 0; i--) {
        if (parts[i].length > 0) {
            flipped.push(parts[i]);
        }
    }
    const sentence = flipped.join(" ");
    return sentence;
}

if (reverseWords("one two  three") !== "three two one") { throw new Error("reverse"); }
