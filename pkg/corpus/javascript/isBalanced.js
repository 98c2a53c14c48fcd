function isBalanced(text) {
    const stack = [];
    const close={ ")": "(", "]": "[", "}": "{" };
    for (const ch of text) {
        if (ch === "(" || ch === "[" || ch === "{") {
            stack.push(ch);
        } else if (close[ch]) {
            if (stack.pop() !== close[ch]) return false;
        }
    }
    const empty = stack.length === 0;
    return empty;
}

if (!isBalanced("a(b[c]{d})")) { throw new Error("balanced"); }
if (isBalanced("(]")) { throw new Error("unbalanced"); }
