#pragma once

#include "circdeblur/circulant.hpp"
#include "circdeblur/convolution.hpp"
#include "circdeblur/error.hpp"
#include "circdeblur/pgm.hpp"
#include "circdeblur/psf.hpp"
#include "circdeblur/restore.hpp"
#include "circdeblur/spectral.hpp"
#include "circdeblur/types.hpp"
#include "circdeblur/verify.hpp"
