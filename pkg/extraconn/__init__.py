# extraconn package
