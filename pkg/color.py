white = (0xFF, 0xFF, 0xFF)

command_text = (0x20, 0xA0, 0xFF)
trace = (0xA0, 0xA0, 0xA0)

verified = (0x0, 0xFF, 0x0)
failed = (0xFF, 0x30, 0x30)

invalid = (0xFF, 0xFF, 0x00)
impossible = (0x80, 0x80, 0x80)
error = (0xFF, 0x40, 0x40)
