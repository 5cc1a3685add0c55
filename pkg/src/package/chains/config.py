from logging import Logger

from package.logger import Timer, rlog


class ChainConfig:
    def __init__(
        self,
        logger: Logger = rlog,
    ):
        self.logger = logger
        self.timer = Timer(self.logger)
