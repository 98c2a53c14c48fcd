function longestCommonPrefix(words) {
    if (words.length === 0) return "";
    let prefix=words[0];
    for (let i = 1; i < words.length; i++) {
        let k = 0;
        while (k < prefix.length && k < words[i].length && prefix[k] === words[i][k]) {
            k += 1;
        }
        prefix = prefix.slice(0, k);
    }
    return prefix;
}

if (longestCommonPrefix(["flower", "flow", "flood"]) !== "flo") { throw new Error("prefix"); }
if (longestCommonPrefix([]) !== "") { throw new Error("emptyPrefix"); }
