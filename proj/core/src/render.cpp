#include "tupper/render.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "tupper/classic.hpp"
#include "tupper/errors.hpp"
#include "tupper/eval.hpp"

namespace tupper {

namespace {

struct SliceLayout {
    int h_axis = 0;  // lower free axis, drawn rightward
    int v_axis = 1;  // higher free axis, drawn upward
    std::vector<std::int64_t> cell;  // fixed coordinates preloaded
};

SliceLayout resolve_slice(const GridParams& params, const SliceSpec& slice) {
    const int needed = params.rank - 2;
    if (static_cast<int>(slice.fixed.size()) != needed) {
        throw std::invalid_argument("slice must fix exactly " + std::to_string(needed) +
                                    " axes, got " + std::to_string(slice.fixed.size()));
    }
    std::vector<std::optional<std::int64_t>> fixed(static_cast<std::size_t>(params.rank));
    for (const auto& [axis, value] : slice.fixed) {
        if (axis < 0 || axis >= params.rank) {
            throw std::invalid_argument("slice axis x" + std::to_string(axis + 1) +
                                        " does not exist");
        }
        if (fixed[static_cast<std::size_t>(axis)]) {
            throw std::invalid_argument("slice fixes axis x" + std::to_string(axis + 1) +
                                        " twice");
        }
        if (value < 0 || value >= params.dims[static_cast<std::size_t>(axis)]) {
            throw std::invalid_argument(
                "slice coordinate " + std::to_string(value) + " outside [0, " +
                std::to_string(params.dims[static_cast<std::size_t>(axis)]) + ") on axis x" +
                std::to_string(axis + 1));
        }
        fixed[static_cast<std::size_t>(axis)] = value;
    }

    SliceLayout layout;
    layout.cell.assign(static_cast<std::size_t>(params.rank), 0);
    int free_seen = 0;
    for (int axis = 0; axis < params.rank; ++axis) {
        if (fixed[static_cast<std::size_t>(axis)]) {
            layout.cell[static_cast<std::size_t>(axis)] = *fixed[static_cast<std::size_t>(axis)];
        } else if (free_seen++ == 0) {
            layout.h_axis = axis;
        } else {
            layout.v_axis = axis;
        }
    }
    return layout;
}

void paint_block(PnmImage& image, std::int64_t cell_x, std::int64_t cell_y_from_top,
                 int scale, Rgb value) {
    for (std::int64_t dy = 0; dy < scale; ++dy) {
        for (std::int64_t dx = 0; dx < scale; ++dx) {
            image.set(cell_x * scale + dx, cell_y_from_top * scale + dy, value);
        }
    }
}

}  // namespace

PnmImage render_slice(const RenderRequest& request) {
    const GridParams& params = request.enc.params;
    if (request.scale < 1) {
        throw std::invalid_argument("render scale must be >= 1");
    }
    if (request.palette.colors() != params.colors) {
        throw std::invalid_argument("palette has " + std::to_string(request.palette.colors()) +
                                    " colours plus background, grid expects " +
                                    std::to_string(params.colors));
    }
    SliceLayout layout = resolve_slice(params, request.slice);

    const std::int64_t cells_x = params.dims[static_cast<std::size_t>(layout.h_axis)];
    const std::int64_t cells_y = params.dims[static_cast<std::size_t>(layout.v_axis)];
    PnmImage image = make_image(cells_x * request.scale, cells_y * request.scale,
                                /*bitmap=*/false, request.palette.background());

    const bool fast = request.evaluator == Evaluator::fast;
    const BigInt quotient = fast ? request.enc.quotient() : BigInt(0);
    const Dyadic half(1, -1);

    std::vector<int> colors;
    for (std::int64_t v = 0; v < cells_y; ++v) {
        layout.cell[static_cast<std::size_t>(layout.v_axis)] = v;
        for (std::int64_t u = 0; u < cells_x; ++u) {
            layout.cell[static_cast<std::size_t>(layout.h_axis)] = u;

            colors.clear();
            if (fast) {
                for (int j = 1; j <= params.colors; ++j) {
                    if (quotient_bit(params, quotient, layout.cell, j)) {
                        colors.push_back(j);
                    }
                }
            } else {
                // Centre of the cell, with the last axis offset into the
                // window [k, k + A_n).
                SamplePoint point;
                point.coords.reserve(layout.cell.size());
                for (std::size_t axis = 0; axis < layout.cell.size(); ++axis) {
                    Dyadic coord = Dyadic(BigInt(layout.cell[axis])) + half;
                    if (axis + 1 == layout.cell.size()) {
                        coord = coord + Dyadic(request.enc.k);
                    }
                    point.coords.push_back(std::move(coord));
                }
                for (int j = 1; j <= params.colors; ++j) {
                    if (painted(eval_f(request.enc, point, j))) {
                        colors.push_back(j);
                    }
                }
            }

            if (colors.size() > 1 && request.multi == MultiColorPolicy::strict) {
                throw MultiColorError({layout.cell.begin(), layout.cell.end()}, colors);
            }
            if (!colors.empty()) {
                paint_block(image, u, cells_y - 1 - v, request.scale,
                            request.palette.color(colors.front()));
            }
        }
    }
    return image;
}

PnmImage render_classic(const BigInt& k, int scale) {
    if (scale < 1) {
        throw std::invalid_argument("render scale must be >= 1");
    }
    PnmImage image = make_image(std::int64_t(classic_width) * scale,
                                std::int64_t(classic_height) * scale, /*bitmap=*/true);
    const Dyadic half(1, -1);
    for (int y = 0; y < classic_height; ++y) {
        const Dyadic yc = Dyadic(k + y) + half;
        for (int x = 0; x < classic_width; ++x) {
            const Dyadic xc = Dyadic(BigInt(x)) + half;
            if (painted(eval_classic(k, xc, yc))) {
                paint_block(image, x, classic_height - 1 - y, scale, rgb_black);
            }
        }
    }
    return image;
}

}  // namespace tupper
