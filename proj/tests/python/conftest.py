import os
import sys

# Under ctest the module lives in the build tree rather than site-packages.
build = os.environ.get("TPATHS_BUILD_DIR")
if build:
    sys.path.insert(0, os.path.join(build, "python"))
