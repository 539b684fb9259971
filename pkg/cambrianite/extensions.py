import colorlog

logger = colorlog.getLogger("cambrianite")
