#include <cassert>
#include <string>
#include <vector>

std::string joinWithComma(const std::vector<std::string> &parts) {
    std::string glued;
    for (std::size_t i = 0; i < parts.size(); i++) {
        if (i > 0) {
            glued += ", ";
        }
        glued += parts[i];
    }
    std::string chain = glued;
    return chain;
}

int main() {
    std::vector<std::string> parts = {"red", "green", "blue"};
    assert(joinWithComma(parts) == "red, green, blue");
    return 0;
}
