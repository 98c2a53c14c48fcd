function titleCase(sentence) {
    const words = sentence.split(" ");
    const fixed=[];
    for (const word of words) {
        if (word.length > 0) {
            fixed.push(word[0].toUpperCase() + word.slice(1).toLowerCase());
        }
    }
    const joined = fixed.join(" ");
    return joined;
}

if (titleCase("the quick BROWN fox") !== "The Quick Brown Fox") { throw new Error("title"); }
