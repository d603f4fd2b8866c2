import colorlog
import logging

LEVEL_COLORS = {
    'DEBUG': 'cyan',
    'INFO': 'green',
    'WARNING': 'yellow',
    'ERROR': 'red',
    'CRITICAL': 'red,bg_white',
}

# Suites run checks on worker threads, so file records carry the thread name
FILE_FORMAT = '%(asctime)s - %(name)s - %(threadName)s - %(levelname)s - %(message)s'


def get_console_formatter():
    return colorlog.ColoredFormatter(
        "%(log_color)s%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt='%H:%M:%S',
        reset=True,
        log_colors=LEVEL_COLORS,
        style='%'
    )


def get_file_formatter():
    return logging.Formatter(FILE_FORMAT, datefmt='%Y-%m-%d %H:%M:%S')


class ModuleFormatter(logging.Formatter):
    """Tags every record with a fixed-width module name, colored unless ``colorful`` is off.

    INFO lines take the module's own color so output from concurrent suites
    stays distinguishable.
    """

    def __init__(self, module_name: str, color: str = 'white', colorful: bool = True):
        super().__init__()
        self.module_name = module_name
        self.color = color
        self.colorful = colorful
        tag = f"%(asctime)s - [{module_name:^10}] - %(levelname)s - %(message)s"

        if colorful:
            self.formatter = colorlog.ColoredFormatter(
                f"%(log_color)s{tag}",
                datefmt='%H:%M:%S',
                reset=True,
                log_colors={**LEVEL_COLORS, 'INFO': color},
            )
        else:
            self.formatter = logging.Formatter(tag, datefmt='%H:%M:%S')

    def format(self, record):
        return self.formatter.format(record)
