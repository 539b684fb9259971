import logging
import os
import sys
from logging.handlers import TimedRotatingFileHandler

import colorlog
import yaml
from flask import Flask

import cambrianite
from cambrianite.defaultconfig import DefaultConfig
from cambrianite.extensions import logger

LOG_FORMAT = (
    "[%(asctime)s] - Cambrianite[%(process)d] - %(module)s - %(funcName)s - %(lineno)d - "
    "%(levelname)s - %(message)s"
)


def setup_logging(app):
    level = logging.getLevelName(app.config.get("CAMBRIANITE_LOG", "INFO"))
    if not isinstance(level, int):
        level = logging.INFO
    if app.config.get("DEBUG"):
        level = logging.DEBUG
    logger.setLevel(level)
    logger.handlers.clear()
    logger.propagate = False

    if sys.stderr.isatty():
        color_log_handler = colorlog.StreamHandler(sys.stderr)
        color_log_handler.setFormatter(
            colorlog.ColoredFormatter("%(log_color)s" + LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S %Z")
        )
        logger.addHandler(color_log_handler)
    else:
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(stream_handler)

    if app.config.get("CAMBRIANITE_LOG_TO_FILE"):
        os.makedirs(os.path.join(app.config.get("CAMBRIANITE_DATA_FOLDER"), "logs"), exist_ok=True)
        fh = TimedRotatingFileHandler(
            os.path.join(app.config.get("CAMBRIANITE_DATA_FOLDER"), "logs", "cambrianite.log"),
            when=app.config.get("CAMBRIANITE_LOG_ROTATE_WHEN"),
            interval=app.config.get("CAMBRIANITE_LOG_ROTATE_INTERVAL"),
            backupCount=app.config.get("CAMBRIANITE_BACKUP_COUNT"),
        )
        fh.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(fh)


def create_app(cli=True):
    app = Flask(__name__)
    app.config.from_object(DefaultConfig)

    # config.yml overrides the defaults but not the environment
    config_file = os.path.join(app.config.get("CAMBRIANITE_DATA_FOLDER"), "config.yml")
    if os.path.exists(config_file):
        app.config.from_file(config_file, load=yaml.safe_load)
        for option in DefaultConfig.__dict__:
            if option.isupper() and option in os.environ:
                app.config[option] = getattr(DefaultConfig, option)

    setup_logging(app)
    logger.debug("Cambrianite {}".format(cambrianite.__version__))

    if cli:
        from cambrianite.blueprints.cli import cambrianite_cli

        app.cli.add_command(cambrianite_cli, name="cambrianite")

    return app


def start():
    app = create_app(cli=False)

    from cambrianite.blueprints.cli import cambrianite_cli

    with app.app_context():
        cambrianite_cli.main(prog_name="cambrianite")
