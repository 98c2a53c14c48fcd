"""Surface tokenizer for C-family, Java, JavaScript, and Python source text.

This is a flat scanner, not a parser: it splits source into identifiers,
numbers, string/char literals, comments, preprocessor directives, operators,
punctuation, and whitespace. The token stream is lossless: concatenating the
token texts reproduces the input byte-for-byte, which lets transformation
rules rewrite selected tokens and re-serialize without touching anything
else. Literal, comment, and directive tokens are "masked": no rule may
modify their contents.

The scanner is keyed on a language tag only where surface syntaxes genuinely
conflict (``//`` is a comment in C but floor division in Python, ``#`` is a
comment in Python but a directive in C). Everything else is shared.
"""

from __future__ import annotations

from dataclasses import dataclass

# Token kinds:
#   ident     identifier or keyword
#   number    numeric literal
#   string    string or character literal (masked)
#   comment   line or block comment (masked)
#   directive preprocessor line such as #include (masked)
#   op        operator or punctuation
#   ws        whitespace, including newlines

MASKED_KINDS = frozenset({"string", "comment", "directive"})
CODE_KINDS = frozenset({"ident", "number", "op"})

C_FAMILY = frozenset({"c", "cpp", "java", "javascript", "unknown"})

# Union of reserved words across C, C++, Java, JavaScript, and Python.
# Treating another language's keyword as reserved is always the safe
# direction: it only prevents a rename or a feature count, never causes one.
KEYWORDS = frozenset(
    """
    auto break case char const continue default do double else enum extern
    float for goto if inline int long register restrict return short signed
    sizeof static struct switch typedef union unsigned void volatile
    bool catch class constexpr decltype delete explicit export false friend
    mutable namespace new noexcept nullptr operator private protected public
    template this throw true try typeid typename using virtual wchar_t
    abstract assert boolean byte extends final finally implements import
    instanceof interface native package strictfp super synchronized throws
    transient var
    async await debugger function in of let typeof undefined null yield
    False None True and as def del elif except from global is lambda
    nonlocal not or pass raise with match
    """.split()
)

# Identifiers that are very likely to resolve outside the snippet (entry
# points, standard-library names). Renaming rules must leave these alone.
RENAME_DENYLIST = frozenset(
    """
    main printf scanf puts gets fprintf sprintf snprintf fputs fgets
    stderr stdout stdin malloc calloc realloc free memcpy memmove memset
    strlen strcmp strncmp strcpy strncpy strcat strchr strstr
    abs labs fabs sqrt pow exp log floor ceil fmod round
    exit atoi atof rand srand time NULL size_t ssize_t
    int8_t int16_t int32_t int64_t uint8_t uint16_t uint32_t uint64_t
    std cout cin cerr endl vector string map unordered_map pair make_pair
    push_back pop_back emplace_back size empty clear begin end rbegin rend
    sort reverse swap min max to_string stoi stod npos first second
    System String Integer Long Double Float Boolean Character Byte Short
    Math Object StringBuilder out err println print append toString
    length charAt substring indexOf equals hashCode valueOf parseInt
    parseDouble compareTo
    console log warn error info Error TypeError RangeError JSON stringify
    parse Array isArray push pop shift unshift slice splice join concat
    Number isInteger parseFloat Object keys values entries freeze
    require module exports process Promise Symbol Map Set
    floor ceil trunc random
    range len sum enumerate zip sorted reversed list dict set tuple str
    int float bool bytes input open isinstance issubclass repr hash id
    ord chr divmod all any iter next getattr setattr hasattr
    ValueError TypeError IndexError KeyError ZeroDivisionError Exception
    StopIteration RuntimeError NotImplementedError
    self cls
    """.split()
)

_STRING_PREFIX_CHARS = frozenset("rbfuRBFU")

_OPERATORS3 = ("===", "!==", ">>>", "<<=", ">>=", "**=", "//=", "...")
_OPERATORS2 = (
    "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=", "/=",
    "%=", "->", "=>", "<<", ">>", "**", "::", "&=", "|=", "^=", ":=", "//",
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int  # character offset of first char
    end: int    # character offset one past last char

    def __repr__(self) -> str:  # compact for test failures
        return f"Token({self.kind}, {self.text!r}, {self.start})"


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch in "_$"


def _is_ident_char(ch: str) -> bool:
    return ch.isalnum() or ch in "_$"


def tokenize(text: str, language: str = "unknown") -> list[Token]:
    """Split ``text`` into a lossless token stream.

    ``language`` is one of c, cpp, java, javascript, python, unknown;
    unrecognized values behave like unknown.
    """
    py = language == "python"
    tokens: list[Token] = []
    n = len(text)
    i = 0
    line_start = True  # only whitespace seen since the last newline

    def emit(kind: str, j: int) -> None:
        nonlocal i
        tokens.append(Token(kind, text[i:j], i, j))
        i = j

    while i < n:
        ch = text[i]

        # whitespace (newlines included)
        if ch.isspace():
            j = i + 1
            while j < n and text[j].isspace():
                j += 1
            if "\n" in text[i:j]:
                line_start = True
            emit("ws", j)
            continue

        # comments and directives
        if py:
            if ch == "#":
                emit("comment", _to_eol(text, i))
                continue
        else:
            if ch == "/" and text[i : i + 2] == "//":
                emit("comment", _to_eol(text, i))
                line_start = False
                continue
            if ch == "/" and text[i : i + 2] == "/*":
                close = text.find("*/", i + 2)
                emit("comment", n if close < 0 else close + 2)
                line_start = False
                continue
            if ch == "#":
                if language in ("c", "cpp", "unknown") and line_start:
                    emit("directive", _to_eol(text, i))
                    continue
                if language == "unknown":
                    emit("comment", _to_eol(text, i))
                    continue
                # java/js: lone '#', scan as punctuation
                emit("op", i + 1)
                line_start = False
                continue

        line_start = False

        # string and char literals
        if ch in "\"'" or (not py and ch == "`"):
            emit("string", _scan_string(text, i, py))
            continue

        # identifiers, possibly a string prefix like f"..." or rb'...'
        if _is_ident_start(ch):
            j = i + 1
            while j < n and _is_ident_char(text[j]):
                j += 1
            word = text[i:j]
            if (
                py
                and j < n
                and text[j] in "\"'"
                and len(word) <= 3
                and all(c in _STRING_PREFIX_CHARS for c in word)
            ):
                emit("string", _scan_string(text, j, py, prefix_start=i))
                continue
            emit("ident", j)
            continue

        # numbers
        if ch.isdigit():
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] in "._"):
                j += 1
            emit("number", j)
            continue

        # operators and punctuation, longest match first
        three = text[i : i + 3]
        if three in _OPERATORS3:
            emit("op", i + 3)
            continue
        two = text[i : i + 2]
        if two in _OPERATORS2:
            # '//' only reaches here in Python mode (floor division); every
            # other language consumed it as a comment above.
            emit("op", i + 2)
            continue
        emit("op", i + 1)

    return tokens


def _to_eol(text: str, i: int) -> int:
    j = text.find("\n", i)
    return len(text) if j < 0 else j


def _scan_string(text: str, quote_pos: int, py: bool, prefix_start: int | None = None) -> int:
    """Return the end offset of the literal opening at ``quote_pos``.

    ``prefix_start`` widens the token to include a Python prefix (f, r, b...).
    Unterminated literals run to end of line (end of file for triple quotes
    and backtick templates); syntax checking reports them separately.
    """
    n = len(text)
    q = text[quote_pos]
    if py and text[quote_pos : quote_pos + 3] in ('"""', "'''"):
        close = text.find(q * 3, quote_pos + 3)
        return n if close < 0 else close + 3
    multiline = q == "`"  # JS template literals may span lines
    i = quote_pos + 1
    while i < n:
        ch = text[i]
        if ch == "\\" and i + 1 < n:
            i += 2
            continue
        if ch == q:
            return i + 1
        if ch == "\n" and not multiline:
            return i  # unterminated: stop before the newline
        i += 1
    return n


def render(tokens: list[Token]) -> str:
    """Inverse of tokenize: concatenate token texts."""
    return "".join(t.text for t in tokens)


def code_tokens(tokens: list[Token]) -> list[Token]:
    """Tokens that participate in code structure (no whitespace, no masked)."""
    return [t for t in tokens if t.kind in CODE_KINDS]


def identifiers(tokens: list[Token]) -> list[Token]:
    return [t for t in tokens if t.kind == "ident"]


def masked_spans(tokens: list[Token]) -> list[tuple[int, int, str]]:
    """(start, end, text) of every literal/comment/directive token."""
    return [(t.start, t.end, t.text) for t in tokens if t.kind in MASKED_KINDS]


def is_keyword(name: str) -> bool:
    return name in KEYWORDS
