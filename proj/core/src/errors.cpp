#include "tupper/errors.hpp"

namespace tupper {

std::string MultiColorError::describe(const std::vector<std::int64_t>& cell,
                                      const std::vector<int>& colors) {
    std::string text = "cell (";
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i) text += ", ";
        text += std::to_string(cell[i]);
    }
    text += ") decodes to colours {";
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (i) text += ", ";
        text += std::to_string(colors[i]);
    }
    text += "}; strict mode allows at most one";
    return text;
}

}  // namespace tupper
