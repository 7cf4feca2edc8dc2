#include "orpose/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <opencv2/imgcodecs.hpp>

namespace orpose {

ImageF resize_bilinear(const ImageF& src, int out_width, int out_height) {
    if (src.empty())
        throw std::invalid_argument("resize_bilinear: empty image");
    if (out_width < 1 || out_height < 1)
        throw std::invalid_argument("resize_bilinear: output size must be positive");

    ImageF dst(out_width, out_height, src.channels);
    const double sx = static_cast<double>(src.width) / out_width;
    const double sy = static_cast<double>(src.height) / out_height;

    std::vector<int> x0(out_width), x1(out_width);
    std::vector<float> wx(out_width);
    for (int x = 0; x < out_width; ++x) {
        const double fx = (x + 0.5) * sx - 0.5;
        const double fl = std::floor(fx);
        x0[x] = std::clamp(static_cast<int>(fl), 0, src.width - 1);
        x1[x] = std::clamp(static_cast<int>(fl) + 1, 0, src.width - 1);
        wx[x] = static_cast<float>(fx - fl);
    }

    for (int c = 0; c < src.channels; ++c) {
        for (int y = 0; y < out_height; ++y) {
            const double fy = (y + 0.5) * sy - 0.5;
            const double fl = std::floor(fy);
            const int y0 = std::clamp(static_cast<int>(fl), 0, src.height - 1);
            const int y1 = std::clamp(static_cast<int>(fl) + 1, 0, src.height - 1);
            const float wy = static_cast<float>(fy - fl);
            for (int x = 0; x < out_width; ++x) {
                const float top = src.at(c, y0, x0[x]) * (1.0f - wx[x]) + src.at(c, y0, x1[x]) * wx[x];
                const float bot = src.at(c, y1, x0[x]) * (1.0f - wx[x]) + src.at(c, y1, x1[x]) * wx[x];
                dst.at(c, y, x) = top * (1.0f - wy) + bot * wy;
            }
        }
    }
    return dst;
}

ImageF flip_horizontal(const ImageF& src) {
    ImageF dst(src.width, src.height, src.channels);
    for (int c = 0; c < src.channels; ++c)
        for (int y = 0; y < src.height; ++y)
            for (int x = 0; x < src.width; ++x)
                dst.at(c, y, x) = src.at(c, y, src.width - 1 - x);
    return dst;
}

void save_png(const ImageF& img, const std::string& path) {
    if (img.channels != 3)
        throw std::invalid_argument("save_png: expected 3 channels");
    cv::Mat mat(img.height, img.width, CV_8UC3);
    for (int y = 0; y < img.height; ++y) {
        auto* row = mat.ptr<cv::Vec3b>(y);
        for (int x = 0; x < img.width; ++x) {
            // OpenCV stores BGR.
            for (int c = 0; c < 3; ++c) {
                const float v = std::clamp(img.at(c, y, x), 0.0f, 1.0f);
                row[x][2 - c] = static_cast<unsigned char>(std::lround(v * 255.0f));
            }
        }
    }
    if (!cv::imwrite(path, mat))
        throw std::runtime_error("save_png: failed to write " + path);
}

ImageF load_png(const std::string& path) {
    cv::Mat mat = cv::imread(path, cv::IMREAD_COLOR);
    if (mat.empty())
        throw std::runtime_error("load_png: failed to read " + path);
    ImageF img(mat.cols, mat.rows, 3);
    for (int y = 0; y < mat.rows; ++y) {
        const auto* row = mat.ptr<cv::Vec3b>(y);
        for (int x = 0; x < mat.cols; ++x)
            for (int c = 0; c < 3; ++c)
                img.at(c, y, x) = static_cast<float>(row[x][2 - c]) / 255.0f;
    }
    return img;
}

}  // namespace orpose
