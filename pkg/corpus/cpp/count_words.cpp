#include <cassert>
#include <string>

int countWords(const std::string &line) {
    int words = 0;
    bool inside = false;
    for (std::size_t i = 0; i < line.size(); i++) {
        bool space = line[i] == ' ';
        if (!space && !inside) {
            words = words + 1;
            inside = true;
        }
        if (space) inside = false;
    }
    return words;
}

int main() {
    assert(countWords("  two  words ") == 2);
    assert(countWords("") == 0);
    return 0;
}
