#pragma once

#include "zipfcode/alphabet.hpp"
#include "zipfcode/coding.hpp"
#include "zipfcode/corpus.hpp"
#include "zipfcode/distribution.hpp"
#include "zipfcode/errors.hpp"
#include "zipfcode/estimation.hpp"
#include "zipfcode/io.hpp"
#include "zipfcode/random_typing.hpp"
#include "zipfcode/sampling.hpp"
#include "zipfcode/zipf_model.hpp"
