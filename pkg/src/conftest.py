import os

from hypothesis import settings

from package.chains.fixtures import *
from package.core.fixtures import *
from package.stieltjes.fixtures import *
from package.verify.fixtures import *

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("dev", max_examples=25, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "dev"))
